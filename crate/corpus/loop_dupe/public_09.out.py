def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def first_square_over(limit):
    k = 0
    while True:
        k += 1
        if k * k > limit:
            break
    while True:
        k += 1
        if k * k > limit:
            break
    return k
