def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def double(v):
    d = [0] * len(v)
    for i in range(len(v)):
        d[i] = v[i] + v[i]
    return d
