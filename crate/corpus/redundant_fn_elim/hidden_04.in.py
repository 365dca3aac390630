def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def mark(label):
    """Does nothing."""

def words(text):
    mark('split')
    parts = text.split(' ')
    mark('done')
    return len(parts)
# probe: words('a b c')
