def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def similarity(u, v):
    total = 0.0
    for k in range(len(u)):
        total += u[k] * v[k]
    return total
