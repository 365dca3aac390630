def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def rect_area(w, h):
    area = w * h
    return area * 1
# probe: rect_area(3, 4)
