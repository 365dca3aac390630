def pick_larger(a, b):
    if a >= b:
        return a
    return b
def total_of_sums(a, b):
    s = 0
    for i in range(len(a)):
        s += a[i] + b[i]
    return s
