def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def rotate_left(items):
    shift = -1 % 4
    n = len(items)
    if n == 0:
        return items
    shift = shift % n
    return items[shift:] + items[:shift]
# probe: rotate_left([1, 2, 3, 4, 5])
# probe: rotate_left([])
