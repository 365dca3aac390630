def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def middle_sum(values):
    s = 0
    for k in range(1, 3):
        s += values[k]
    return s
