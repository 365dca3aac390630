def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def total(values):
    s = 0
    for v in values:
        s += v
    return s
# probe: total([1, 2, 3])
