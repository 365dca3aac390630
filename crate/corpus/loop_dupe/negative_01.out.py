def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def show_twice(values):
    for v in values:
        print(v)
    for v in values:
        print(v)
    return len(values)
