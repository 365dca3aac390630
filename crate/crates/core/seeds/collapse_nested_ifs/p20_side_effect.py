def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def audit(entries):
    flagged = []
    for e in entries:
        if e < 0:
            if e % 5 == 0:
                print('flag', e)
                flagged.append(e)
    return len(flagged)
# probe: audit([-5, -3, 10, -20])
