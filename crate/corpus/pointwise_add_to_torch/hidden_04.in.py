def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def accumulate(a, b, times):
    while times > 0:
        s = [0] * len(a)
        for i in range(len(a)):
            s[i] = a[i] + b[i]
        a = s
        times -= 1
    return a
