def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def add(a, b):
    c = [0] * len(a)
    for i in range(len(a)):
        c[i] = a[i] + b[i]
    return c
