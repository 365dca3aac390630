def partition(values, pivot):
    low = []
    for v in values:
        if v < pivot:
            low.append(v)
    high = []
    for v in values:
        if v >= pivot:
            high.append(v)
    return low, high
# probe: partition([5, 1, 8, 3, 9], 5)
