def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def rotate_left(items):
    shift = 3
    n = len(items)
    if n == 0:
        return items
    shift = shift % n
    return items[shift:] + items[:shift]
