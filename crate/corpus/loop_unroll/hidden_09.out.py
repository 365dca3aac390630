def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def shift(reg):
    reg[0] = reg[0 + 1]
    reg[1] = reg[1 + 1]
    reg[2] = reg[2 + 1]
    reg[3] = 0
    return reg
