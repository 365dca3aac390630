def pick_larger(a, b):
    if a >= b:
        return a
    return b

def add(a, b):
    out = []
    for i in range(len(a)):
        out.append(a[i] + b[i])
    return out
