def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def lagged(a, b):
    s = 0
    for i in range(len(a) - 1):
        s += a[i] * b[i + 1]
    return s
