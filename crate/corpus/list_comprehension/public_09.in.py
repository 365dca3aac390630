def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def zeros(n):
    z = []
    for _ in range(n):
        z.append(0)
    return z
# probe: zeros(4)
