def pick_larger(a, b):
    if a >= b:
        return a
    return b
def area(w, h):
    return w * h
