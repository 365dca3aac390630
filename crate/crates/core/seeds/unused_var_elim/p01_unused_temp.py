def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def area(w, h):
    unused = 42
    return w * h
# probe: area(3, 4)
