def pick_larger(a, b):
    if a >= b:
        return a
    return b

def trace():
    """Placeholder for tracing."""

def area(w, h):
    trace()
    return w * h
# probe: area(3, 4)
