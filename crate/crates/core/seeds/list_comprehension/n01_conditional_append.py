def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def evens(values):
    out = []
    for v in values:
        if v % 2 == 0:
            out.append(v)
    return out
# probe: evens([1, 2, 3, 4])
