def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def in_window(values, lo, hi):
    out = [v for v in values if lo <= v and v < hi]
    return out
