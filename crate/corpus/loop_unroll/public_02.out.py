def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def header(title):
    print('=' * (0 + 3))
    print('=' * (1 + 3))
    print(title)
    return len(title)
