def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def squares(n):
    out = []
    print('start')
    for k in range(n):
        out.append(k * k)
    return out
