def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def matches(a, b):
    same = [x for x, y in zip(a, b) if x == y]
    return same
