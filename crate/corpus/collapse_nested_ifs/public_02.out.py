def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def in_box(x, y, z):
    if x >= 0 and y >= 0 and z >= 0:
        return True
    return False
