def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def powers():
    table = {}
    for e in range(4):
        table[e] = 2 ** e
    return table
# probe: powers()
