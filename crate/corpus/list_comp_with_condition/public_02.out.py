def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def positive_squares(values):
    sq = [v * v for v in values if v > 0]
    return sq
