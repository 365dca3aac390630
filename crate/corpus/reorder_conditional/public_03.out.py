def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def lookup(table, key):
    if key in table:
        return table[key]
    else:
        return 'unknown'
