def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def split_parts(values):
    halves = [v // 2 for v in values]
    rests = [v % 2 for v in values]
    return halves, rests
