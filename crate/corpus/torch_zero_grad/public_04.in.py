def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def finetune(trainer, batch):
    trainer.model.zero_grad()
    loss = trainer.model(batch).mean()
    loss.backward()
    trainer.optimizer.step()
    return loss
