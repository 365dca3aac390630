def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def first_three_sum(values):
    s = 0
    s += values[0]
    s += values[1]
    s += values[2]
    return s
