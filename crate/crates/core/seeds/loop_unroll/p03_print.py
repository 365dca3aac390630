def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def header(title):
    for k in range(2):
        print('=' * (k + 3))
    print(title)
    return len(title)
# probe: header('menu')
