def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def dot(a, b):
    s = 0
    for x, y in zip(a, b):
        s += x * y
    for x, y in zip(a, b):
        s += x * y
    return s
