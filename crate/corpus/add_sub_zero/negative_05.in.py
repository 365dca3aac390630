def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def circle_area(r):
    pi = 3.0 + 0.14159
    return pi * r * r
# probe: circle_area(2)
