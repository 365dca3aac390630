def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def evens(values):
    out = []
    for v in values:
        if v % 2 == 0:
            out.append(v)
    return out
# probe: evens([1, 2, 3, 4, 6])
