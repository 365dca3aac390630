def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def find(values, target):
    for k in range(len(values)):
        if values[k] == target:
            return k
    return -1
