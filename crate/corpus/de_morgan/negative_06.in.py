def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def parity(n):
    if n >= 0:
        if n % 2 == 0:
            return 'even'
        else:
            return 'odd'
    return 'negative'
# probe: parity(4)
# probe: parity(3)
# probe: parity(-2)
