def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def bounds(x):
    if 5 < 3 < 10:
        x = 0
    return x + 1
# probe: bounds(2)
