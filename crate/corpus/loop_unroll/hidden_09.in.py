def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def shift(reg):
    for k in range(3):
        reg[k] = reg[k + 1]
    reg[3] = 0
    return reg
# probe: shift([1, 2, 3, 4])
