def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def matches(a, b):
    same = []
    for x, y in zip(a, b):
        if x == y:
            same.append(x)
    return same
# probe: matches([1, 2, 3], [1, 5, 3])
