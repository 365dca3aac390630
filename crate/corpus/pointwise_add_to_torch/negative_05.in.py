def pick_larger(a, b):
    if a >= b:
        return a
    return b

def add_logged(a, b):
    c = []
    for i in range(len(a)):
        c.append(a[i] + b[i])
        print(i)
    return c
