"""Vector utilities."""

def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def vadd(u, v):
    w = []
    for i in range(len(u)):
        w.append(u[i] + v[i])
    return w
