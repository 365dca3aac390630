def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def lookup(table, key):
    if key not in table:
        return 'unknown'
    else:
        return table[key]
# probe: lookup({'a': 1}, 'a')
# probe: lookup({'a': 1}, 'b')
