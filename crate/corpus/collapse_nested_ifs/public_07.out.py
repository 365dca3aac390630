def first_big_even(values):
    i = 0
    found = -1
    while i < len(values):
        if values[i] > 10 and values[i] % 2 == 0:
            found = values[i]
            break
        i += 1
    return found
