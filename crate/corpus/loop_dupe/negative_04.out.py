def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def mean(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
