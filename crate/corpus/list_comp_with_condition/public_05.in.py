def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def passing(pairs):
    names = []
    for name, score in pairs:
        if score >= 50:
            names.append(name)
    return names
# probe: passing([('a', 70), ('b', 20), ('c', 50)])
