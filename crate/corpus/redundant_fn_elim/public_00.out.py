def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def run(n):
    total = 0
    for k in range(n):
        total += k
    return total
