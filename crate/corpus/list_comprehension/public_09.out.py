def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def zeros(n):
    z = [0 for _ in range(n)]
    return z
