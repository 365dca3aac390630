def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def rule(a, b, c):
    return not a or not (not b or not c)
