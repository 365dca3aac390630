def pick_larger(a, b):
    if a >= b:
        return a
    return b
def show(values):
    for v in values:
        print(v)
    for v in values:
        print(v)
    return len(values)
