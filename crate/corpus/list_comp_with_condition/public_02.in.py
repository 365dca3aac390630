def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def positive_squares(values):
    sq = []
    for v in values:
        if v > 0:
            sq.append(v * v)
    return sq
# probe: positive_squares([-2, 3, 0, 4])
