def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def words(text):
    parts = text.split(' ')
    return len(parts)
