def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def in_box(x, y, z):
    if x >= 0:
        if y >= 0:
            if z >= 0:
                return True
    return False
# probe: in_box(1, 2, 3)
# probe: in_box(1, -2, 3)
# probe: in_box(0, 0, -1)
