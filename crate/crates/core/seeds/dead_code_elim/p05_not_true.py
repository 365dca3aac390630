def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def clean(words):
    out = []
    for w in words:
        if not True:
            out.append(w.upper())
        out.append(w.strip())
    return out
# probe: clean([' a ', 'b '])
