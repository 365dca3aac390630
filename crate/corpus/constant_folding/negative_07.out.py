def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def mask(values, keep):
    out = []
    for v in values:
        if keep:
            out.append(v + 1)
        else:
            out.append(v * 0)
    return out
