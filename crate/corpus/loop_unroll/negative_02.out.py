def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def first_even(values):
    found = -1
    for k in range(3):
        if values[k] % 2 == 0:
            found = values[k]
            break
    return found
