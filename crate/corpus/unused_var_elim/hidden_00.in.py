def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def swap(a, b):
    original = (a, b)
    return b, a
# probe: swap(1, 2)
