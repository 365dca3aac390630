def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def shift_all(values, delta):
    shifted = []
    for v in values:
        shifted.append(v + delta + 0)
    return shifted
# probe: shift_all([1, 2, 3], 10)
