def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def wrap_index(i, n):
    if n == 0:
        return -1
    return (i + 2) % n
