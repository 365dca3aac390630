def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def evens(values):
    out = [v for v in values if v % 2 == 0]
    return out
