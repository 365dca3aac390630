def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def powers():
    table = {}
    table[0] = 2 ** 0
    table[1] = 2 ** 1
    table[2] = 2 ** 2
    table[3] = 2 ** 3
    return table
