def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def lookup(table, key):
    if not key in table:
        return 'unknown'
    else:
        return table[key]
# probe: lookup({'a': 'alpha'}, 'a')
# probe: lookup({'a': 'alpha'}, 'b')
