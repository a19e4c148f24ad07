package zoo.core;

public interface Trainable extends Feedable {
    // Returns true once the command sticks.
    boolean train(String command);
}
