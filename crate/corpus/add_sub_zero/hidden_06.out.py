def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def shift_all(values, delta):
    shifted = []
    for v in values:
        shifted.append(v + delta)
    return shifted
