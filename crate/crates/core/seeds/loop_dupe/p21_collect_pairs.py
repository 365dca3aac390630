def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def pairs(n):
    out = []
    for a in range(n):
        out.append((a, a * a))
    return out
# probe: pairs(3)
