def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def index_of_max(items):
    best = 0
    for i in range(len(items)):
        if items[i] > items[best + 0]:
            best = i
    return best
# probe: index_of_max([3, 8, 2, 8])
# probe: index_of_max([1])
