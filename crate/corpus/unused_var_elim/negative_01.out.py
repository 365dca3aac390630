def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def hypot2(a, b):
    aa = a * a
    bb = b * b
    return aa + bb
