def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def rule(a, b, c):
    return not (a and not (b and c))
# probe: rule(True, True, True)
# probe: rule(True, True, False)
# probe: rule(False, False, False)
