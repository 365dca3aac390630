def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def first_three_sum(values):
    s = 0
    for k in range(3):
        s += values[k]
    return s
# probe: first_three_sum([4, 5, 6, 7])
