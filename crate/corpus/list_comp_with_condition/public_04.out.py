def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def vowels_in(text):
    found = [ch for ch in text if ch in 'aeiou']
    return found
