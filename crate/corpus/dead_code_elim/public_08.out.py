def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def size(n):
    if n < 10:
        return 'small'
    return 'large'
