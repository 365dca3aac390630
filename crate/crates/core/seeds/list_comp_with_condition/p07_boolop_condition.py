def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def in_window(values, lo, hi):
    out = []
    for v in values:
        if lo <= v and v < hi:
            out.append(v)
    return out
# probe: in_window([1, 5, 9, 12], 4, 10)
