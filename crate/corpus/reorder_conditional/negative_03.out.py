def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def lookup(table, key):
    if key not in table:
        return 'unknown'
    else:
        return table[key]
