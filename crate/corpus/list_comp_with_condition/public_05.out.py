def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def passing(pairs):
    names = [name for name, score in pairs if score >= 50]
    return names
